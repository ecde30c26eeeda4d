import re
import setuptools as setup


def find_packages():
    return ['flagsphere'] + ['flagsphere.'+p for p in setup.find_packages('flagsphere')]


def get_version():
    with open('flagsphere/__init__.py') as f:
        return re.search(r"__version__ = '([^']+)'", f.read()).group(1)


requirements = [
    'numpy>=1.20',
    'pandas>=1.1',
    'networkx>=3.1',
    'sympy>=1.12',
]

setup.setup(
    name='flagsphere',
    version=get_version(),
    author='0phoff',
    description='Exact toolkit for flag spheres, independence complexes and their graphs',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(),
    test_suite='test',
    install_requires=requirements,
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['flagsphere=flagsphere._cli:main']},
)
